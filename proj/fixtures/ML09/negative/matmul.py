import numpy as np

a = np.zeros((3, 4))
b = np.ones((4, 2))
c = np.matmul(a, b)
d = a @ b
print(c, d)
