# -*- coding: utf-8 -*-

"""共享夹具：把 src 加入路径，并提供常用测试信号"""

import os
import sys

import pytest

# 添加 src 到 Python 路径（与 scripts/ 相同）
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from signals.generators import generate, parse_generator


def make_signal(text, n=1024, window=(-8.0, 8.0)):
    return generate(parse_generator(text, n=n, window=window))


@pytest.fixture(scope="session")
def gaussian():
    return make_signal("gaussian")


@pytest.fixture(scope="session")
def hermite1():
    return make_signal("hermite(1)")


@pytest.fixture(scope="session")
def rect1():
    return make_signal("rect(1)")


@pytest.fixture(scope="session")
def chirp1():
    return make_signal("chirp(1)")


@pytest.fixture(scope="session")
def two_pulse():
    return make_signal("two_pulse(3, 0.5)")


@pytest.fixture(scope="session")
def make():
    """按文本与网格生成信号的工厂"""
    return make_signal
