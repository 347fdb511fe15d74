# 模糊函数：逐点/网格/截面求值、射线零点扫描与导出
