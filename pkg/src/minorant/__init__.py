# 余弦下界：常数构造、优化、严格校验与证书序列化
