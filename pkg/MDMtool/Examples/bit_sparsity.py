"""
This example shows how sparse the bit columns of bell-shaped weights are. The empirical density of every
fractional bit is plotted next to the closed form and the band allowed by the sparsity bound.
"""
import matplotlib.pyplot as plt
import numpy as np

from MDMtool import Exponential, HalfNormal
from MDMtool.Methods import closed_form_density, verify_theorem1


def bit_sparsity(n: int = 10 ** 5, bits: int = 8) -> dict:
    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
    reports = {}
    for ax, dist in zip(axes, (Exponential(2.), HalfNormal(0.5))):
        report = verify_theorem1(dist, n, bits, seed=1)
        k = np.arange(bits)
        ax.fill_between(k, 0.5 - report.bound, 0.5 + report.bound, color='tab:gray', alpha=0.3, label='Bound')
        ax.plot(k, report.p_hat, 'bo', label='Sampled')
        ax.plot(k, [closed_form_density(dist, bit) for bit in k], 'k--', label='Closed form')
        ax.set_xlabel('Fractional bit k')
        ax.set_title(dist.name)
        reports[dist.name] = report
    axes[0].set_ylabel('Fraction of ones')
    axes[0].legend()
    plt.show()
    return reports


if __name__ == "__main__":  # pragma: no cover
    bit_sparsity()
