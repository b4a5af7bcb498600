import numpy as np
import pandas as pd

frame = pd.DataFrame({"a": [1.0, None]})
missing = frame[frame["a"] == np.nan]  # expect: ML02
print(missing)
