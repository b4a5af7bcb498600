from sklearn import metrics

y_true = [0, 1, 1]
y_pred = [0, 1, 0]
acc = metrics.accuracy_score(y_true, y_pred)  # expect: ML22
rec = metrics.recall_score(y_true, y_pred)  # expect: ML22
