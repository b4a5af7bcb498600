import numpy as np

a = np.zeros((3, 4))
b = np.ones((4, 2))
c = np.dot(a, b)  # expect: ML09
print(c)
