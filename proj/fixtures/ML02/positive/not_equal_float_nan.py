import numpy as np

values = np.array([1.0, 2.0])
first = values[0]
if first != float("NaN"):  # expect: ML02
    print(first)
