import tensorflow as tf

for units in [8, 16, 32]:
    model = tf.keras.Sequential([tf.keras.layers.Dense(units)])  # expect: ML12
    model.compile(optimizer="adam", loss="mse")
