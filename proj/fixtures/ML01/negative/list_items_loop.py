import numpy as np

weights = {"a": 1.0, "b": 2.0}
for key, value in weights.items():
    print(key, np.sqrt(value))
