import math
import pandas as pd

frame = pd.DataFrame({"a": [1.0]})
flag = frame["a"].max() == math.nan  # expect: ML02
print(flag)
