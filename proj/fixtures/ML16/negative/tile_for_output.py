import numpy as np

row = np.array([1.0, 2.0])
tiled = np.tile(row, (3, 1))
print(tiled.shape)
