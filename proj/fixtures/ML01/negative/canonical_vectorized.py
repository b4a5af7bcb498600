import pandas as pd
df = pd.DataFrame([1, 2, 3])

result = df.add(1)
