import numpy as np
from sklearn.tree import DecisionTreeClassifier

features = np.array([[1.0, 200.0], [2.0, 300.0]])
labels = np.array([0, 1])
tree = DecisionTreeClassifier(max_depth=3, random_state=0)
tree.fit(features, labels)
