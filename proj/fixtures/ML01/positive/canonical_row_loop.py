import pandas as pd
df = pd.DataFrame([1, 2, 3])

result = []
for index, row in df.iterrows():  # expect: ML01
    result.append(row[0] + 1)
result = pd.DataFrame(result)
