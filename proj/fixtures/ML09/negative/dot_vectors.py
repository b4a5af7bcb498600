import numpy as np

v = np.array([1.0, 2.0, 3.0])
w = np.arange(3)
print(np.dot(v, w))
