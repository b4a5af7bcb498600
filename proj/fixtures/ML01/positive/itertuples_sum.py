import pandas as pd

frame = pd.DataFrame({"price": [1.0, 2.0], "qty": [3, 4]})
total = 0.0
for row in frame.itertuples():  # expect: ML01
    total = total + row.price * row.qty
print(total)
