# 共享一维求解器：黄金分割极小化与二分求根
