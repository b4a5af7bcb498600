import pandas as pd

frame = pd.DataFrame({"a": [1.0], "b": [2.0]})
frame.drop(columns=["b"], inplace=False)  # expect: ML07
print(frame)
