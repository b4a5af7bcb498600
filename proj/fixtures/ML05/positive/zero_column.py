import pandas as pd

frame = pd.DataFrame({"a": [1, 2]})
frame["b"] = 0  # expect: ML05
