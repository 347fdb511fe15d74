# 命令行：运行配置、子命令与入口
