"""Values printed in the three-atom worked example, transcribed verbatim."""

MU_MOMENT_MATRIX_3 = """
1 13/6 17/6 31/6 37/6 19/2 79/6 85/6 121/6 209/6
13/6 31/6 37/6 79/6 85/6 121/6 211/6 205/6 265/6 433/6
17/6 37/6 19/2 85/6 121/6 209/6 205/6 265/6 433/6 267/2
31/6 79/6 85/6 211/6 205/6 265/6 583/6 517/6 601/6 913/6
37/6 85/6 121/6 205/6 265/6 433/6 517/6 601/6 913/6 1633/6
19/2 121/6 209/6 265/6 433/6 267/2 601/6 913/6 1633/6 3137/6
79/6 211/6 205/6 583/6 517/6 601/6 1651/6 1357/6 1417/6 1969/6
85/6 205/6 265/6 517/6 601/6 913/6 1357/6 1417/6 1969/6 3361/6
121/6 265/6 433/6 601/6 913/6 1633/6 1417/6 1969/6 3361/6 6337/6
209/6 433/6 267/2 913/6 1633/6 3137/6 1969/6 3361/6 6337/6 4139/2
"""

NU_MOMENT_MATRIX_3 = """
1 2 7/3 14/3 5 7 12 35/3 15 73/3
2 14/3 5 12 35/3 15 98/3 29 101/3 51
7/3 5 7 35/3 15 73/3 29 101/3 51 91
14/3 12 35/3 98/3 29 101/3 92 227/3 79 329/3
5 35/3 15 29 101/3 51 227/3 79 329/3 187
7 15 73/3 101/3 51 91 79 329/3 187 1057/3
12 98/3 29 92 227/3 79 794/3 205 581/3 243
35/3 29 101/3 227/3 79 329/3 205 581/3 243 1169/3
15 101/3 51 79 329/3 187 581/3 243 1169/3 715
73/3 51 91 329/3 187 1057/3 243 1169/3 715 1387
"""
VANDERMONDE_2 = [[1, 2, 4, 4, 8, 16], [1, 3, 2, 9, 6, 4], [1, 1, 1, 1, 1, 1]]

KERNEL_2 = [[16, 6, -27, 0, 0, 5], [12, -8, -9, 0, 5, 0], [14, -21, 2, 5, 0, 0]]

RELATIONS_2 = ["14 - 21*x + 2*y + 5*x^2", "12 - 8*x - 9*y + 5*x*y", "16 + 6*x - 27*y + 5*y^2"]

DEGREE_3_RELATION = "14*x - 21*x^2 + 2*x*y + 5*x^3"
DEGREE_3_RELATION_VECTOR = [0, 14, 0, -21, 2, 0, 5, 0, 0, 0]

EXTENSION_C = """
0 -14/5 0 21/5 -2/5 0
0 -12/5 0 8/5 9/5 0
0 0 -12/5 0 8/5 9/5
0 0 -16/5 0 -6/5 27/5
"""

GROEBNER_BASIS = ["8 - 14*y + 7*y^2 - y^3", "16 + 6*x - 27*y + 5*y^2"]
REDUCED_BASIS = ["y^3 - 7*y^2 + 14*y - 8", "x + 5/6*y^2 - 9/2*y + 8/3"]

ATOMS = [(2, 4), (3, 2), (1, 1)]
