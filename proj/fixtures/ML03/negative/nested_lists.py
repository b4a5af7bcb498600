import pandas as pd

grid = [[1, 2], [3, 4]]
frame = pd.DataFrame(grid)
print(grid[0][1], frame.loc[0, 1])
