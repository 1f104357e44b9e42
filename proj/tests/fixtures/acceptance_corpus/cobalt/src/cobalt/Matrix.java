package cobalt;

/* Dense matrix helpers. */
public class Matrix {
  // Row-major storage.
  double[] data;
  int rows, cols;

  /**
   * Builds a zero matrix.
   */
  public Matrix(int rows, int cols) {
    this.rows = rows;
    this.cols = cols;
    data = new double[rows * cols];
    // TODO validate dimensions
  }

  double get(int r, int c) {
    return data[r * cols + c];
  }

  void scale(double k) {
    for (int i = 0; i < data.length; i++) {
      data[i] *= k;
    }
    // workaround for negative zero, see issue tracker
    normalize();
  }

  private void normalize() {
    // TODO: stub
  }

  @Deprecated
  // Old name kept for callers. FIXME remove in 2.0
  void mul(double k) {
    scale(k);
  }
}
