# 信号核心：采样信号、求积、矩与离散度、傅里叶变换、内置波形、CSV 读写
