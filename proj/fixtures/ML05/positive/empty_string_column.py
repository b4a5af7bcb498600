import pandas as pd

frame = pd.DataFrame({"a": [1, 2]})
frame["label"] = ""  # expect: ML05
