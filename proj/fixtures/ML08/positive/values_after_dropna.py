import pandas as pd

frame = pd.DataFrame({"a": [1.0, None]})
clean = frame.dropna().values  # expect: ML08
print(clean)
