import pandas as pd

frame = pd.DataFrame({"a": [1], "b": [2]})
for name in frame.columns:
    print(name)
