import pandas as pd

frame = pd.DataFrame({"a": [1, 2]})
column = frame["a"]
print(column[0])
