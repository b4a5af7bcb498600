import numpy as np
import pandas as pd

frame = pd.DataFrame({"a": [1, 2]})
frame["b"] = np.nan
