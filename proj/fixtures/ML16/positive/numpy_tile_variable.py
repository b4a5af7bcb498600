import numpy as np

matrix = np.ones((3, 2))
row = np.array([1.0, 2.0])
tiled = np.tile(row, (3, 1))  # expect: ML16
scaled = matrix * tiled
