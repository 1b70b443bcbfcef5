"""
This document samples an exponential and a half-normal distribution and checks that every fractional bit is
less than half dense and within f(0)/2^(2+k) of one half, up to three binomial standard deviations.
"""
from MDMtool import Exponential, HalfNormal, SparsityReport
from MDMtool.Methods import closed_form_density, verify_theorem1


def validate(n: int = 10 ** 6, bits: int = 8, seed: int = 0) -> tuple[SparsityReport, SparsityReport, float]:
    reports = []
    for dist in (Exponential(1.), HalfNormal(1.)):
        report = verify_theorem1(dist, n, bits, seed)
        print(f'{dist.name}: p_hat = {report.p_hat.round(4).tolist()}, all within the bound: {report.all_ok}')
        reports.append(report)
    exact = closed_form_density(Exponential(1.), 0)
    print(f'Exponential(1), k = 0: p_hat {reports[0].p_hat[0]:.4f}, closed form {exact:.4f}')
    return reports[0], reports[1], exact


if __name__ == "__main__":  # pragma: no cover
    validate()
