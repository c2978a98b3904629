"""
慢速套件（不参与门控）
"""
from __future__ import annotations

from typing import List

from core.errors import SBError
from core.sheffer import LAGUERRE_REF, Basis, ExactPoly
from core.transforms import monte_carlo_S
from core.verify.registry import CheckContext, check
from core.verify.report import ReportRow, error_row, numeric_row

MC_SAMPLES = 1_000_000


@check("slow", "transforms.monte_carlo")
def _monte_carlo(ctx: CheckContext) -> List[ReportRow]:
    """Laguerre(1,1,1)：(𝕊s_2)(1) = 1，误差不超过 3 个标准误"""
    test_id = "slow.transforms.monte_carlo.Laguerre.z=1"
    inputs = {'z': 1.0, 'samples': MC_SAMPLES, 'seed': ctx.seed}
    f = ExactPoly.basis_element(2, Basis.SHEFFER)
    try:
        estimate = monte_carlo_S(LAGUERRE_REF, f, 1.0, samples=MC_SAMPLES, seed=ctx.seed)
    except SBError as exc:
        return [error_row(test_id, inputs, exc, "abs")]
    return [numeric_row(test_id, {**inputs, 'stderr': estimate.stderr}, 1.0, estimate.mean,
                        3 * estimate.stderr, "abs")]
