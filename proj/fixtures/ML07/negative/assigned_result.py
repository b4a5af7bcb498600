import pandas as pd

frame = pd.DataFrame({"a": [1.0, None]})
frame = frame.dropna()
print(frame)
