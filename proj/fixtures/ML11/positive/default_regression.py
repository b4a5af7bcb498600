from sklearn.linear_model import LinearRegression

reg = LinearRegression()  # expect: ML11
