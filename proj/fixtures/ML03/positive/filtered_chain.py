import pandas as pd

frame = pd.DataFrame({"a": [1, 2], "b": [3, 4]})
subset = frame[frame["a"] > 1]["b"]  # expect: ML03
print(subset)
