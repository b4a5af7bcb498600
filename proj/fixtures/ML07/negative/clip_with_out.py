import numpy as np

values = np.array([-1.0, 2.0])
np.clip(values, 0.0, 1.0, out=values)
print(values)
