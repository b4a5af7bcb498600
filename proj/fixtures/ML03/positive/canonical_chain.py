import pandas as pd

df = pd.DataFrame({("one", "two"): [1, 2]})
value = df["one"]["two"]  # expect: ML03
