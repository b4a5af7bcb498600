import pandas as pd

left = pd.DataFrame({"key": [1], "x": [2]})
right = pd.DataFrame({"key": [1], "y": [3]})
joined = left.merge(right)  # expect: ML06
