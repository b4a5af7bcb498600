import numpy as np
import pandas as pd

frame = pd.DataFrame({"a": [1.0, np.nan]})
missing = frame[frame["a"].isna()]
print(missing)
