#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
错误类型 - 所有库异常的统一层次

每个异常携带 exit_code，命令行入口据此退出：
 - 2  输入/用法错误
 - 3  认证半径超过经验零点（实现缺陷）
 - 4  所需矩不有限
"""

from __future__ import annotations


class ZerofreeError(Exception):
    """库异常基类"""
    exit_code = 2


class SignalError(ZerofreeError):
    """采样信号或生成器参数非法"""


class SignalFormatError(SignalError):
    """信号 CSV 无法读取或格式不符"""


class WeightError(ZerofreeError):
    """不是非负权重（负值超出容差或全零）"""


class CertificateError(ZerofreeError):
    """下界证书未通过校验或与 q 不匹配"""


class MomentNotFiniteError(ZerofreeError):
    """所需矩不有限"""
    exit_code = 4

    def __init__(self, moment: str, hint: str = ""):
        self.moment = moment
        message = f"moment not finite: {moment}"
        if hint:
            message += f"; {hint}"
        super().__init__(message)


class SoundnessViolation(ZerofreeError):
    """认证半径超过经验零点"""
    exit_code = 3
