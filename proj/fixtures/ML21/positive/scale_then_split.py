import numpy as np
from sklearn.model_selection import train_test_split
from sklearn.preprocessing import StandardScaler

features = np.ones((10, 2))
labels = np.zeros(10)
scaled = StandardScaler().fit_transform(features)
parts = train_test_split(scaled, labels, test_size=0.2, random_state=0)  # expect: ML21
