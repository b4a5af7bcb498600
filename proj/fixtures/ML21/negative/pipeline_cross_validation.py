import numpy as np
from sklearn.linear_model import LogisticRegression
from sklearn.model_selection import cross_val_score
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import MinMaxScaler

features = np.ones((10, 2))
labels = np.zeros(10)
pipe = make_pipeline(MinMaxScaler(), LogisticRegression(C=1.0))
scores = cross_val_score(pipe, features, labels, cv=5)
