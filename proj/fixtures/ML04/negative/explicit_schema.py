import pandas as pd

frame = pd.read_csv("data.csv", usecols=["id", "score"], dtype={"id": int, "score": float})
print(frame.shape)
