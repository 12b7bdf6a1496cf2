"""One-way analysis of variance over backend timing groups."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from scipy import stats


@dataclass(frozen=True)
class FTestResult:
    F: float
    df_between: int
    df_within: int
    p_value: float
    critical_5pct: float

    @property
    def significant_at_5pct(self) -> bool:
        return self.F > self.critical_5pct

    @property
    def p_bracket(self) -> str:
        for cut in (0.001, 0.01, 0.05):
            if self.p_value < cut:
                return f"p < {cut:g}"
        return "p >= 0.05"

    def summary(self) -> str:
        verdict = "significant" if self.significant_at_5pct else "not significant"
        return (f"F({self.df_between}, {self.df_within}) = {self.F:.4f}, "
                f"{self.p_bracket} (p = {self.p_value:.4g}); {verdict} at 5%")


def anova_f(groups: Sequence[Sequence[float]]) -> FTestResult:
    """F = (SSB / (k - 1)) / (SSW / (n - k)) for k groups of n total samples.

    When both sums of squares vanish the groups are indistinguishable and F
    is reported as 0.
    """
    if len(groups) < 2:
        raise ValueError("anova_f needs at least 2 groups")
    groups = [[float(x) for x in g] for g in groups]
    if any(len(g) < 2 for g in groups):
        raise ValueError("every group needs at least 2 samples")

    n_total = sum(len(g) for g in groups)
    grand = math.fsum(math.fsum(g) for g in groups) / n_total
    means = [math.fsum(g) / len(g) for g in groups]
    ssb = math.fsum(len(g) * (m - grand) ** 2 for g, m in zip(groups, means))
    ssw = math.fsum((x - m) ** 2 for g, m in zip(groups, means) for x in g)
    df_b = len(groups) - 1
    df_w = n_total - len(groups)

    if ssw == 0.0:
        f = 0.0 if ssb == 0.0 else math.inf
    else:
        f = (ssb / df_b) / (ssw / df_w)
    p = float(stats.f.sf(f, df_b, df_w)) if math.isfinite(f) else 0.0
    crit = float(stats.f.ppf(0.95, df_b, df_w))
    return FTestResult(f, df_b, df_w, p, crit)
