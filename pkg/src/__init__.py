# Zerofree Tools - 模糊函数认证无零区域工具集
