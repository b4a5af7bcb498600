import numpy as np
from sklearn.decomposition import PCA

features = np.array([[1.0, 200.0], [2.0, 300.0]])
pca = PCA(n_components=1)
pca.fit(features)  # expect: ML10
