from sklearn.metrics import f1_score, roc_auc_score

y_true = [0, 1, 1]
y_pred = [0, 1, 0]
y_score = [0.1, 0.9, 0.4]
print(f1_score(y_true, y_pred), roc_auc_score(y_true, y_score))
