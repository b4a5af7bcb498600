import numpy as np
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import MinMaxScaler
from sklearn.svm import SVC

features = np.array([[1.0, 200.0], [2.0, 300.0]])
labels = np.array([0, 1])
pipe = Pipeline([("scale", MinMaxScaler()), ("svc", SVC(C=1.0))])
pipe.fit(features, labels)
