# 认证器：矩型首零点下界、无零区域构造与暴力扫描校验
