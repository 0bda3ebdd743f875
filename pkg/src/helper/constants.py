# shifted gamma surrogate of the order 1 Tracy-Widom law, moment matched
TW1_K = 46.446
TW1_DELTA = 0.186054
TW1_ALPHA = 9.84801

# default accuracy of the special functions
DEFAULT_REL_TOL = 1e-13
DEFAULT_MAX_ITER = 500

# quantile solvers
QUANTILE_PROB_TOL = 1e-9
QUANTILE_THETA_XTOL = 1e-14
QUANTILE_MAX_ITER = 200

# first rung of the multi-precision ladder, doubled until the self-check passes
DPS_FLOOR = 30

# exact vs approximate comparison grid, m = -1/2, n = 100
COMPARISON_S = (5, 15, 100)
COMPARISON_M = -0.5
COMPARISON_N = 100.0

# yapf: disable
# name, s, m, n, theta, target seconds
BENCH_CASES = [
  ('beta-s1',         1,  0.0,    0.0,   0.5,      0.001),
  ('small-s5-n1000',  5,  -0.5, 1000.0,  0.008501, 0.1),
  ('medium-s54',      54, -0.5,   22.5,  0.92,     1.0),
  ('large-s200',      200, -0.5, 149.5,  0.827760, 15.0),
]
# yapf: enable

CSV_SIGNIFICANT_DIGITS = 10
