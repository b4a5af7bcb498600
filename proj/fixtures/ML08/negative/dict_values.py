import pandas as pd

settings = {"a": 1}
frame = pd.DataFrame(settings, index=[0])
print(list(settings.values()), frame.shape)
