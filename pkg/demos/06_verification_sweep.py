"""A small verification sweep, as run by ``edgereg sweep``.

Run with ``python3 demos/06_verification_sweep.py``.
"""
# %%
from edgereg.sweep import SweepConfig, run_verification_sweep

cfg = SweepConfig(shape="cycle", n_range=(3, 4, 5, 6), alphabet=(1, 2, 3), t_range=(1, 2), timing=False)
report = run_verification_sweep(cfg)
print(report.summary)

# %%
# Rows of integrally closed instances carry a prediction and two engine values.
for row in report.rows:
    if row["closed"] and row["n"] == 6:
        print(row)

# %%
print(report.to_csv(timing=False).splitlines()[0])
print("pass" if report.passed else "FAIL")
