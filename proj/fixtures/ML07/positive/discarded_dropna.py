import pandas as pd

frame = pd.DataFrame({"a": [1.0, None]})
frame.dropna()  # expect: ML07
print(frame)
