import pandas as pd

frame = pd.read_json("data.json", dtype={"id": int})
print(frame.shape)
