from sklearn.linear_model import LogisticRegression

clf = LogisticRegression(C=0.5, max_iter=200)
