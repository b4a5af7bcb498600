import pandas as pd

frame = pd.DataFrame({"a": [1.0, None]})
frame.fillna(0.0, inplace=True)
print(frame)
