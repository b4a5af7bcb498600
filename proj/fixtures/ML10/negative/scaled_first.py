import numpy as np
from sklearn.decomposition import PCA
from sklearn.preprocessing import StandardScaler

features = np.array([[1.0, 200.0], [2.0, 300.0]])
scaled = StandardScaler().fit_transform(features)
pca = PCA(n_components=1)
pca.fit(scaled)
