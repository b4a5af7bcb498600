from pandas import read_excel

frame = read_excel("sheet.xlsx", usecols=["id", "score"])  # expect: ML04
print(frame.shape)
