import numpy as np
from sklearn.model_selection import KFold, train_test_split

features = np.ones((10, 2))
labels = np.zeros(10)
x_train, x_test, y_train, y_test = train_test_split(features, labels, test_size=0.2, random_state=7)
folds = KFold(n_splits=5)
