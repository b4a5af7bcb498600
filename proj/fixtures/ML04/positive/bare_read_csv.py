import pandas as pd

frame = pd.read_csv("data.csv")  # expect: ML04
print(frame.shape)
