"""Hand-transcribed reference matrices, keyed by tableau labels."""

# d_1 : F^{2,4}_1 -> F^{2,4}_0
D24_1_ROWS = ["34", "24", "14", "23", "13", "12"]
D24_1_COLS = ["23|4", "13|4", "12|4", "24|3", "14|3", "14|2", "12|3", "13|2"]
D24_1 = [
    ["-x2", "-x1", "0", "-x2", "-x1", "0", "0", "0"],
    ["0", "0", "-x1", "x3", "0", "-x1", "0", "0"],
    ["0", "0", "0", "0", "x3", "x2", "0", "0"],
    ["x4", "0", "0", "0", "0", "0", "-x1", "-x1"],
    ["0", "x4", "0", "0", "0", "0", "0", "x2"],
    ["0", "0", "x4", "0", "0", "0", "x3", "0"],
]

# d_2 : F^{2,4}_2 -> F^{2,4}_1
D24_2_ROWS = D24_1_COLS
D24_2_COLS = ["12|34", "13|24", "14|23"]
D24_2 = [
    ["x1", "x1", "0"],
    ["0", "-x2", "0"],
    ["-x3", "0", "0"],
    ["-x1", "0", "x1"],
    ["0", "0", "-x2"],
    ["0", "0", "x3"],
    ["x4", "0", "0"],
    ["0", "x4", "0"],
]

# degree-3 slice of d_1 on F^{2,3}: rows x_v[S], columns the two generators
PHI23_ROWS = [(v, S) for S in ("23", "13", "12") for v in (1, 2, 3)]
PHI23_COLS = ["12|3", "13|2"]
PHI23 = [
    [-1, -1],
    [0, 0],
    [0, 0],
    [0, 0],
    [0, 1],
    [0, 0],
    [0, 0],
    [0, 0],
    [1, 0],
]
