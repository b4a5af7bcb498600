import numpy as np

m = np.array([[1.0, 2.0], [3.0, 4.0]])
product = np.dot(np.eye(2), m)  # expect: ML09
print(product)
