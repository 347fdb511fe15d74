# 变换：分数阶傅里叶变换 F_α 与矩转移上界
