import pandas as pd

left = pd.DataFrame({"id": [1], "x": [2]})
right = pd.DataFrame({"key": [1], "y": [3]})
joined = pd.merge(left, right, left_on="id", right_on="key", how="inner", validate="many_to_one")
