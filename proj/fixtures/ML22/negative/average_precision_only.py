from sklearn.metrics import average_precision_score

y_true = [0, 1, 1]
y_score = [0.1, 0.9, 0.4]
print(average_precision_score(y_true, y_score))
