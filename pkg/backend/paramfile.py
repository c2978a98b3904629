"""
参数文件

JSON 文档：
    {"class": "Laguerre", "alpha": ["1", "0"], "beta": ["1", "0"], "sigma": "1",
     "quad": {"rel_tol": 1e-10, "abs_tol": 1e-14, "max_nodes": 4096}}
有理数一律写成 "p/q"（q > 0）字符串，不接受浮点。
"""
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from core.combinat import GaussRational
from core.errors import DomainError, ParamFileError
from core.measures import QuadConfig
from core.sheffer import LAGUERRE_REF, MeixnerParams, validate_params
from core.utils.logger import logger

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_QUAD_KEYS = {"rel_tol", "abs_tol", "max_nodes", "tail_cutoff"}


def parse_rational(text, where: str) -> Fraction:
    """
    Raises:
        ParamFileError: 不是 "p/q" 字符串或 q ≤ 0
    """
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise ParamFileError(f"{where}: 需要 \"p/q\" 形式的有理数字符串，收到 {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) <= 0:
        raise ParamFileError(f"{where}: 分母必须为正，收到 {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _complex_field(data: dict, key: str) -> GaussRational:
    value = data.get(key)
    if not isinstance(value, list) or len(value) != 2:
        raise ParamFileError(f"{key}: 需要 [re, im] 两个有理数字符串，收到 {value!r}")
    return GaussRational(parse_rational(value[0], f"{key}[0]"), parse_rational(value[1], f"{key}[1]"))


@dataclass(frozen=True)
class ParamFile:
    """解析后的参数文件"""
    params: MeixnerParams
    quad: QuadConfig = field(default_factory=QuadConfig)
    source: Optional[str] = None

    @classmethod
    def from_dict(cls, data: dict, source: Optional[str] = None,
                  quad_defaults: Optional[QuadConfig] = None) -> "ParamFile":
        """
        Raises:
            ParamFileError: 字段缺失、格式错误或参数不在合法域内
        """
        if not isinstance(data, dict):
            raise ParamFileError("参数文件顶层必须是对象")
        unknown = set(data) - {"class", "alpha", "beta", "sigma", "quad"}
        if unknown:
            raise ParamFileError(f"未知字段: {sorted(unknown)}")
        if not isinstance(data.get("class"), str):
            raise ParamFileError(f"class 必须是字符串，收到 {data.get('class')!r}")

        alpha = _complex_field(data, "alpha")
        beta = _complex_field(data, "beta")
        sigma = parse_rational(data.get("sigma"), "sigma")

        quad_data = data.get("quad", {})
        if not isinstance(quad_data, dict) or set(quad_data) - _QUAD_KEYS:
            raise ParamFileError(f"quad 只接受 {sorted(_QUAD_KEYS)}，收到 {quad_data!r}")
        try:
            params = validate_params(alpha, beta, GaussRational(sigma), data["class"])
            base = (quad_defaults or QuadConfig()).to_dict()
            quad = QuadConfig.from_dict({**base, **quad_data})
        except (DomainError, TypeError) as e:
            raise ParamFileError(f"参数无效: {e}") from e
        return cls(params=params, quad=quad, source=source)

    @classmethod
    def load(cls, path: Union[str, Path], quad_defaults: Optional[QuadConfig] = None) -> "ParamFile":
        """
        读取参数文件

        Raises:
            ParamFileError: 文件不存在、不是合法 JSON 或内容无效
        """
        path = Path(path)
        logger.info(f"读取参数文件: {path}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as e:
            raise ParamFileError(f"参数文件不存在: {path}") from e
        except json.JSONDecodeError as e:
            raise ParamFileError(f"参数文件不是合法 JSON: {path}: {e}") from e
        return cls.from_dict(data, source=str(path), quad_defaults=quad_defaults)

    @classmethod
    def builtin(cls, quad_defaults: Optional[QuadConfig] = None) -> "ParamFile":
        """内置的 Laguerre(1,1,1)"""
        return cls(params=LAGUERRE_REF, quad=quad_defaults or QuadConfig(), source=None)

    def to_dict(self) -> dict:
        p = self.params
        return {
            'class': p.family.value,
            'alpha': [str(p.alpha.re), str(p.alpha.im)],
            'beta': [str(p.beta.re), str(p.beta.im)],
            'sigma': str(p.sigma.re),
            'quad': {k: v for k, v in self.quad.to_dict().items() if k != 'tail_cutoff'},
        }
