import pandas as pd

frame = pd.DataFrame({"a": [1, 2]})
frame["b"] = frame["a"] * 0
frame["c"] = 1
