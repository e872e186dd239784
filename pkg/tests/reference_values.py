"""Values printed for the two reference cases (b = 0.6, L = m = g = 1)."""
import numpy as np

B_SPAN = 0.6

EQUILIBRIUM = {
    0.0: (0.1631683, -1.8385927),
    0.1: (0.1640525, -1.7283471),
}

LAMBDA0 = {0.0: 0.1631682, 0.1: 0.1640525}

FREQUENCIES = {
    0.0: (2.4294, 4.3590, 6.1950),
    0.1: (2.4375, 4.3952, 6.2196),
}

# Sine-basis size at which the printed frequencies are reproduced. The
# printed matrices are 4x4 in both cases, but the h=0 frequencies are those
# of a 7-term basis; with N=4 the printed h=0 matrices themselves give
# (2.4299, 4.3800, 6.1964).
FREQUENCY_N = {0.0: 7, 0.1: 4}

ONE_MODE_OMEGA_H0 = 2.4294

M = {
    0.0: np.array([
        [3.4764, 2.5342, 1.6515, 2.2369],
        [2.5342, 3.3974, 1.7375, 2.4056],
        [1.6515, 1.7375, 2.3715, 1.5337],
        [2.2369, 2.4056, 1.5337, 3.1275]]),
    0.1: np.array([
        [3.2559, 2.1171, 1.2612, 2.0685],
        [2.1171, 2.9911, 1.1606, 2.0895],
        [1.2612, 1.1606, 1.9750, 0.9706],
        [2.0685, 2.0895, 0.9706, 2.9150]]),
}

B = {
    0.0: np.array([
        [-38.9759, 0, -55.2220, 0],
        [0, -127.3652, 0, -125.5176],
        [-55.2220, 0, -262.1130, 0],
        [0, -125.5176, 0, -447.1589]]),
    0.1: np.array([
        [-39.1116, 10.7499, -55.2174, 9.7637],
        [10.7499, -127.8014, 27.0240, -125.5289],
        [-55.2174, 27.0240, -263.1210, 49.8938],
        [9.7637, -125.5289, 49.8938, -449.0069]]),
}

P = {
    0.0: np.array([0.5195, 0, 0.3562, 0]),
    0.1: np.array([0.5205, -0.0435, 0.3551, -0.0268]),
}

Q = {
    0.0: np.array([3.1838, 0, 2.1830, 0]),
    0.1: np.array([3.1725, -0.2650, 2.1648, -0.1636]),
}
