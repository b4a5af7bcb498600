import numpy as np

print(np.log(2.0))
