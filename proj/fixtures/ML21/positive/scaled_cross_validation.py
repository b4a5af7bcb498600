import numpy as np
from sklearn.linear_model import LogisticRegression
from sklearn.model_selection import cross_val_score
from sklearn.preprocessing import MinMaxScaler

features = np.ones((10, 2))
labels = np.zeros(10)
scaler = MinMaxScaler()
features = scaler.fit_transform(features)
clf = LogisticRegression(C=1.0)
scores = cross_val_score(clf, features, labels, cv=5)  # expect: ML21
