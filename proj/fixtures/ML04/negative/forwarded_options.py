import pandas as pd

options = {"usecols": ["id"], "dtype": {"id": int}}
frame = pd.read_csv("data.csv", **options)
print(frame.shape)
