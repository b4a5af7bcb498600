import numpy as np

values = np.array([1.0, 2.0])
if not np.isnan(values[0]) and values[1] == 2.0:
    print(values)
