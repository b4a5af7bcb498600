import numpy as np
from sklearn.model_selection import train_test_split
from sklearn.preprocessing import StandardScaler

features = np.ones((10, 2))
labels = np.zeros(10)
x_train, x_test, y_train, y_test = train_test_split(features, labels, test_size=0.2, random_state=0)
scaler = StandardScaler()
x_train = scaler.fit_transform(x_train)
x_test = scaler.transform(x_test)
