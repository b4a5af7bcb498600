import pandas as pd

frame = pd.DataFrame({"a": [1, 2], "b": [3, 4]})
matrix = frame.values  # expect: ML08
print(matrix)
